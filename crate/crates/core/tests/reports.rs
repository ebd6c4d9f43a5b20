use std::fs;

use isolation_core::graph::{build_named, write_edge_list, NamedGraph};
use isolation_core::verify::{
    cycle_bound_check, emit_report, scan_extremal, verify_bound, CorpusSource, ExtremalClass, ReportFormat,
    VerifyOptions,
};
use isolation_core::Error;

fn options(threads: usize) -> VerifyOptions {
    VerifyOptions { threads: Some(threads), ..VerifyOptions::default() }
}

fn render(source: &CorpusSource, threads: usize, format: ReportFormat) -> Vec<u8> {
    let report = verify_bound(source, &options(threads)).unwrap();
    let mut out = Vec::new();
    emit_report(&report, format, &mut out).unwrap();
    out
}

#[test]
fn thread_count_does_not_change_reports() {
    let source = CorpusSource::BuiltinEnumeration { max_n: 6 };
    for format in [ReportFormat::JsonLines, ReportFormat::Csv] {
        assert_eq!(render(&source, 1, format), render(&source, 3, format));
    }
}

#[test]
fn graph6_corpus_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corpus.g6");
    // C4, C5, K4 and an edgeless pair, which is skipped
    fs::write(&path, "# small corpus\nCr\nDhc\n\nC~\nA?\n").unwrap();
    let report = verify_bound(&CorpusSource::Graph6File(path), &options(2)).unwrap();
    assert_eq!(report.summary.get("graphs"), Some(3));
    assert_eq!(report.summary.get("disconnected_skipped"), Some(1));
    assert_eq!(report.violations(), 0);
    let extremal = scan_extremal(report);
    let classes: Vec<ExtremalClass> = extremal.rows.iter().map(|r| r.extremal_class).collect();
    assert_eq!(classes.iter().filter(|c| **c == ExtremalClass::C4K3L1or3).count(), 2);
    assert_eq!(classes.iter().filter(|c| **c == ExtremalClass::C5K2).count(), 3);
    assert_eq!(classes.len(), 5);
}

#[test]
fn corpus_errors_name_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g6");
    fs::write(&path, "Cr\nC\n").unwrap();
    match CorpusSource::Graph6File(path.clone()).load() {
        Err(Error::Corpus { context, .. }) => assert_eq!(context, format!("{}:2", path.display())),
        other => panic!("unexpected {other:?}"),
    }
    let missing = CorpusSource::Graph6File(dir.path().join("missing.g6")).load();
    assert!(matches!(missing, Err(Error::Io { .. })));
}

#[test]
fn edge_list_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.txt");
    fs::write(&path, write_edge_list(&build_named(NamedGraph::Cycle(4)).unwrap())).unwrap();
    let report = cycle_bound_check(&CorpusSource::EdgeListFile(path), &options(1)).unwrap();
    assert_eq!(report.rows.len(), 1);
    assert!(report.rows[0].equality);
    assert_eq!(report.violations(), 0);
}

#[test]
fn reports_written_to_files_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let source = CorpusSource::BuiltinEnumeration { max_n: 5 };
    let mut files = Vec::new();
    for (i, threads) in [1, 2].into_iter().enumerate() {
        let path = dir.path().join(format!("r{i}.csv"));
        let report = verify_bound(&source, &options(threads)).unwrap();
        emit_report(&report, ReportFormat::Csv, fs::File::create(&path).unwrap()).unwrap();
        files.push(fs::read(&path).unwrap());
    }
    assert_eq!(files[0], files[1]);
    let text = String::from_utf8(files.remove(0)).unwrap();
    assert!(text.lines().last().unwrap().starts_with("# violations=0"));
}
