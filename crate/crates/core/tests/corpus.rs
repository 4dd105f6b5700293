use palintiple::corpus::{run_corpus, with_injected_fault, CorpusFilter, Topic, FIXTURES};

#[test]
fn every_quick_fixture_passes() {
    let r = run_corpus(FIXTURES, CorpusFilter::default());
    for f in r.results.iter().filter(|f| !f.passed) {
        eprintln!("{}: {}", f.id, f.detail.as_deref().unwrap_or(""));
    }
    assert!(r.all_passed());
    assert!(r.total >= 25, "only {} fixtures", r.total);
    assert_eq!(r.skipped, 1);
}

#[test]
fn topic_filter_selects_only_that_topic() {
    for topic in Topic::ALL {
        let r = run_corpus(FIXTURES, CorpusFilter { topic: Some(topic), include_long: false });
        assert!(r.total > 0, "{topic}");
        assert!(r.results.iter().all(|f| f.topic == topic));
    }
}

#[test]
fn fault_injection_fails_exactly_once() {
    let r = run_corpus(&with_injected_fault(FIXTURES), CorpusFilter::default());
    assert_eq!(r.failed, 1);
}
