use rightloop::corpus;
use rightloop::looptab::{self, FileKind};
use rightloop::table::{validate, LoopKind};

#[test]
fn bundled_files_match_the_corpus() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    for (name, l) in corpus::all_loops() {
        let text = std::fs::read_to_string(dir.join(format!("{name}.looptab"))).unwrap();
        let parsed = looptab::parse(&text).unwrap();
        assert_eq!(&parsed.table, l.table(), "{name}");
        let is_group = validate(l.table(), 0, LoopKind::Group).unwrap().is_valid();
        assert_eq!(parsed.kind == FileKind::Group, is_group, "{name}");
        assert_eq!(
            looptab::write(&parsed.table, 0, parsed.kind, &[]),
            text,
            "{name}"
        );
    }
}
