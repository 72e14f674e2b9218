//! Symbolic homotopy-group presentations: projective spaces, SL_n, scrolls,
//! blow-ups, and the headline pair with isomorphic tables.
//!
//! ```bash
//! cargo run --example homotopy_tables
//! ```

use a1scrolls::a1pi::{
    f1_central_extension, homotopy_table, isomorphic, parse_expr, pi1_blowup_linear, pi1_sln,
    pi_projective_space, pi_punctured_affine, registry,
};
use a1scrolls::scrolls::ScrollSpec;

fn main() {
    // Projective spaces: Gm in degree 1, a gap, then KMW(n+1) in degree n.
    println!("homotopy groups of P^4:");
    for i in 1u32..=5 {
        println!("  pi_{i} = {}", pi_projective_space(4, i).unwrap());
    }

    // Punctured affine spaces and SL_n.
    println!("\npi_2(A^3\\0) = {}", pi_punctured_affine(3, 2).unwrap());
    println!("pi_1(SL_2)  = {}", pi1_sln(2).unwrap());
    println!("pi_1(SL_3)  = {}", pi1_sln(3).unwrap());

    // F1 is atomic in normal forms, but its central-extension structure is
    // available as metadata.
    println!("\nF1 as a central extension: {}", f1_central_extension());

    // Blow-ups of linear subspaces of P^5.
    println!("\nblow-ups of P^(5-k) inside P^5:");
    for k in 2u32..=5 {
        println!("  k = {k}: {}", pi1_blowup_linear(5, k).unwrap());
    }

    // The headline pair: entrywise-isomorphic tables for scrolls the
    // classifiers separate.
    let s1 = ScrollSpec::new(1, vec![0, 0, 1]).unwrap();
    let s2 = ScrollSpec::new(1, vec![0, 0, 2]).unwrap();
    println!("\ntables for {s1} and {s2}:");
    let t1 = homotopy_table(&s1, 4);
    let t2 = homotopy_table(&s2, 4);
    for ((i, e1), (_, e2)) in t1.iter().zip(&t2) {
        let same = isomorphic(e1, e2);
        println!("  pi_{i}: {e1}   vs   {e2}   isomorphic: {same}");
    }

    // Presentations round-trip through their canonical text form.
    let text = homotopy_table(&ScrollSpec::f2(3), 1)[0].1.to_string();
    let parsed = parse_expr(&text).unwrap();
    println!(
        "\npi_1(F(2;0,3)) = {text} (round-trips: {})",
        parsed.to_string() == text
    );

    // The Euler-status registry names the standard obstructed example.
    println!("\nknown Euler-class statuses:");
    for entry in registry::KNOWN_EULER_CLASSES {
        println!("  {} over {}: {:?}", entry.bundle, entry.base, entry.status);
    }
}
