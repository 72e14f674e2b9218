//! Chow cohomology rings of scrolls: presentations, normal forms, and the
//! degree map.
//!
//! ```bash
//! cargo run --example ring_presentations
//! ```

use a1scrolls::chow::{build_ring, chern_polynomial, BundleSpec, IntPoly};

fn main() {
    // The rank-2 scrolls over the projective plane: relations <x^3, t^2 + b*x*t>.
    println!("rank-2 scrolls over P^2:");
    for b in -2i64..=3 {
        let spec = BundleSpec::new(2, vec![0, b]).unwrap();
        let ring = build_ring(&spec);
        println!("  F(2;0,{b}): {}", ring.presentation_string());
    }

    // A rank-3 bundle over the line: the Chern polynomial has x^2 and x^3
    // terms, but they die against x^2 = 0 in the displayed relation.
    let spec = BundleSpec::new(1, vec![1, 2, 3]).unwrap();
    println!(
        "\nfull Chern polynomial of F(1;1,2,3): {}",
        chern_polynomial(&spec)
    );
    let ring = build_ring(&spec);
    println!(
        "presentation:                        {}",
        ring.presentation_string()
    );

    // Normal forms: rewriting t-powers down onto the monomial basis.
    let f25 = build_ring(&BundleSpec::new(2, vec![0, 5]).unwrap());
    println!();
    for power in 2u32..=4 {
        let p = IntPoly::monomial(1, 0, power);
        println!("in F(2;0,5): t^{power} = {}", f25.normal_form(&p));
    }

    // The degree map reads the coefficient of the fundamental monomial
    // x^m * t^(r-1); here deg(t^3) = b^2 = 25.
    let t3 = IntPoly::monomial(1, 0, 3);
    println!("deg(t^3) over F(2;0,5) = {}", f25.degree(&t3).unwrap());

    // Graded ranks are symmetric around the middle (1, 2, 2, 1 here).
    let ranks: Vec<usize> = (0..=f25.total_dim()).map(|d| f25.graded_rank(d)).collect();
    println!("graded ranks of F(2;0,5): {ranks:?}");
}
