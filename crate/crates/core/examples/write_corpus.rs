//! Regenerates `data/corpus.json` from the family definitions.

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/corpus.json");
    let text = grpexp::catalog::corpus_catalog().expect("corpus builds").to_json();
    std::fs::write(path, text).expect("write corpus");
}
