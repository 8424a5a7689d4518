// `(x0+x1+x2)` and `(x0^2+x1^2+x2^2)` define the same tropical line, yet
// the degree-2 matroid of the first is not a quotient of the second.

use matroid_quotients::demo::standard_line;
use matroid_quotients::tropical::InclusionReport;
use matroid_quotients::Result;

pub fn run() -> Result<InclusionReport> {
    let report = standard_line(2, 20, 9)?;
    println!(
        "M(I_2): rank {} on {} monomials; M(J_2): rank {}",
        report.source.rank(),
        report.source.n(),
        report.target.rank()
    );
    println!("quotient: {}", report.quotient);
    let both = report.samples.iter().filter(|s| s.in_source && s.in_target).count();
    println!("{both} of {} line points land in both tropical sets", report.samples.len());
    Ok(report)
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
