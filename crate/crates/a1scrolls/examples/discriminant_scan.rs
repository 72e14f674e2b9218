//! Discriminant scan over the rank-2 scrolls F(2;0,a): collision search and
//! the comparison against the reference closed form.
//!
//! ```bash
//! cargo run --example discriminant_scan
//! ```

use a1scrolls::forms::{discriminant, f2_cubic, scan_report};

fn main() {
    // The first few computed discriminants.
    println!("computed discriminants of the F(2;0,a) intersection cubics:");
    for a in 0i64..=6 {
        println!(
            "  a = {a}: disc {} = {}",
            f2_cubic(a),
            discriminant(&f2_cubic(a))
        );
    }

    // The scan looks for pairs 0 <= a < a' <= bound with equal computed
    // discriminants.  None exist: the values follow -27a^2, which is
    // injective on a >= 0.
    let report = scan_report(100);
    println!("\nscan to bound {}:", report.bound);
    if report.equal_discriminant_pairs.is_empty() {
        println!("  equal-discriminant pairs: none");
    } else {
        println!(
            "  equal-discriminant pairs: {:?}",
            report.equal_discriminant_pairs
        );
    }

    // The comparison against the reference closed form is always emitted,
    // agree or disagree.
    println!(
        "  closed form {}: {}",
        report.closed_form.formula, report.closed_form.note
    );
}
