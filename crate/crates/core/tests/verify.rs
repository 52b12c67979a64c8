use leibniz_core::corpus::verify::{verify_bundled, Status, CHECKS};

#[test]
fn bundled_corpus_passes_every_check() {
    let report = verify_bundled();
    println!("{report}");
    assert_eq!(report.checks.len(), CHECKS.len());
    for c in &report.checks {
        assert_eq!(c.status, Status::Pass, "{}: {:?}", c.id, c.details);
    }
}
