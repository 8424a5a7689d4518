// A realization of `U_{3,6}` that admits no new point on the three lines
// through `{0,1}`, `{2,3}` and `{4,5}`, with its certificate.

use matroid_quotients::demo::obstructed_extension;
use matroid_quotients::realization::CutExtension;
use matroid_quotients::Result;

/// Returns the dimension of the candidate space (zero when obstructed).
pub fn run() -> Result<Option<usize>> {
    match obstructed_extension(0)? {
        CutExtension::Obstructed(cert) => {
            println!("linear conditions on the new column:");
            for i in 0..cert.system.rows() {
                let row: Vec<String> = cert.system.row(i).iter().map(ToString::to_string).collect();
                println!("  [{}]", row.join(", "));
            }
            println!(
                "candidate space has dimension {}, contained in the span of flat {}",
                cert.dimension(),
                cert.blocking_flat
            );
            println!("certificate verifies: {}", cert.verify()?);
            Ok(Some(cert.dimension()))
        }
        CutExtension::Extended { column, .. } => {
            println!("extended by {column:?}");
            Ok(None)
        }
    }
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
