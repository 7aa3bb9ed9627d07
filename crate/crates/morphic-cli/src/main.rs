use std::process::ExitCode;

fn main() -> ExitCode {
    let code = morphic_cli::run(std::env::args_os(), &mut std::io::stdout());
    ExitCode::from(code as u8)
}
