// Extending a realization of `U_{3,6}` by a point on three lines and
// reading off a line inside the plane.

use matroid_quotients::demo::{nested_extension, NestedExtension};
use matroid_quotients::Result;

pub fn run() -> Result<NestedExtension> {
    let out = nested_extension(7)?;
    println!("column (1,0,0) accepted: {}", out.column_accepted);
    for i in 0..out.pair.bottom.rows() {
        let row: Vec<String> = out.pair.bottom.row(i).iter().map(ToString::to_string).collect();
        println!("  line row {i}: [{}]", row.join(", "));
    }
    println!("line equals the expected one: {}", out.matches_line);
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
