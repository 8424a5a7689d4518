// Single-element extensions of `U_{2,4}`, one per modular cut.

use matroid_quotients::extension::{all_modular_cuts, extend};
use matroid_quotients::{Matroid, Result};

/// Returns the number of modular cuts and the number of extensions that
/// are again uniform.
pub fn run() -> Result<(usize, usize)> {
    let m = Matroid::uniform(2, 4)?;
    let cuts = all_modular_cuts(&m);
    let mut uniform = 0;
    for cut in &cuts {
        let ext = extend(&m, cut, "p")?;
        let minimal: Vec<String> = cut.minimal().iter().map(ToString::to_string).collect();
        println!(
            "cut generated by [{}]: {} circuits, loops {}, coloops {}",
            minimal.join(" "),
            ext.circuits().len(),
            ext.loops(),
            ext.coloops()
        );
        if ext == Matroid::uniform(2, 5)? {
            uniform += 1;
        }
    }
    println!("{} cuts, {} give U(2,5)", cuts.len(), uniform);
    Ok((cuts.len(), uniform))
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
