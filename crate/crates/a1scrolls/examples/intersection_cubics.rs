//! Binary cubic intersection forms of three-dimensional scrolls and their
//! GL2(Z)-invariants.
//!
//! ```bash
//! cargo run --example intersection_cubics
//! ```

use a1scrolls::chow::{build_ring, BundleSpec};
use a1scrolls::forms::{discriminant, intersection_cubic, invariant_profile};

fn main() {
    // Over P^1 the cubic collapses onto the degenerate family
    // (3x - by)y^2, depending only on the twist sum b.
    println!("scrolls over P^1 (cubic depends only on the twist sum):");
    for twists in [[0, 0, 1], [2, -1, 0], [3, 3, 3]] {
        let spec = a1scrolls::ScrollSpec::new(1, twists.to_vec()).unwrap();
        let cubic = intersection_cubic(&spec.chow_ring()).unwrap();
        let b: i64 = twists.iter().sum();
        println!(
            "  {spec} -> {cubic}   (b = {b}, disc = {})",
            discriminant(&cubic)
        );
    }

    // Over P^2 the rank-2 scrolls give nondegenerate cubics for a != 0,
    // with discriminant -27a^2 under the standard convention.
    println!("\nrank-2 scrolls over P^2:");
    for a in 0i64..=4 {
        let ring = build_ring(&BundleSpec::new(2, vec![0, a]).unwrap());
        let cubic = intersection_cubic(&ring).unwrap();
        println!(
            "  F(2;0,{a}) -> {cubic}   (disc = {})",
            discriminant(&cubic)
        );
    }

    // Invariant profiles are the refutation certificates: content,
    // discriminant, Hessian content, and canonical orbit labels mod 2 and 3.
    let ring = build_ring(&BundleSpec::new(1, vec![0, 0, 1]).unwrap());
    let cubic = intersection_cubic(&ring).unwrap();
    let profile = invariant_profile(&cubic);
    println!("\nprofile of the F(1;0,0,1) cubic {cubic}:");
    println!("  content          = {}", profile.content);
    println!("  discriminant     = {}", profile.discriminant);
    println!("  hessian content  = {}", profile.hessian_content);
    println!(
        "  mod-2 orbit      = {:?} ({})",
        profile.mod2.canonical, profile.mod2.name
    );
    println!(
        "  mod-3 orbit      = {:?} ({})",
        profile.mod3.canonical, profile.mod3.name
    );
}
