//! Every built-in corpus entry passes its full assertion suite at the
//! default budget, with nothing skipped.

use morphic::corpus::{catalog, verify, CheckStatus};

#[test]
fn full_corpus_verification() {
    let mut problems = Vec::new();
    for entry in catalog() {
        let report = verify(&entry, None);
        for check in &report.checks {
            match check.status {
                CheckStatus::Pass => {}
                CheckStatus::Fail => problems.push(format!(
                    "{} / {}: {}",
                    entry.id, check.name, check.detail
                )),
                CheckStatus::Skipped => problems.push(format!(
                    "{} / {}: skipped at the default budget",
                    entry.id, check.name
                )),
            }
        }
    }
    assert!(problems.is_empty(), "\n{}", problems.join("\n"));
}
