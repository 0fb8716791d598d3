//! Regenerates the golden representation fixture from the brute-force oracle.
//!
//! cargo run -p laplace2sq-core --example regen_fixtures

use std::fs;
use std::path::Path;

use laplace2sq_core::oracle::fixture_text;

const MAX: u64 = 2000;

fn main() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/reps_1_2000.txt");
    let mut text = format!("# N a b kind, all 0 <= a <= b with a^2 + b^2 = N, for 1 <= N <= {MAX}\n");
    text.push_str(&fixture_text(MAX).expect("oracle within budget"));
    fs::write(&path, text).expect("write fixture");
    println!("wrote {}", path.display());
}
