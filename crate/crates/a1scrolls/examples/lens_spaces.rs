//! The lens-space homotopy classifier: the classical analogue of the scroll
//! phenomenon, with constant homotopy groups across a nontrivial partition.
//!
//! ```bash
//! cargo run --example lens_spaces
//! ```

use a1scrolls::lens::{equivalence_classes, homotopy_equivalent, is_square_mod, LensSpace};

fn main() {
    // L(p,q) ~ L(p,q') exactly when q*q' is a square mod p.
    let pairs = [(7, 1, 2), (5, 1, 2), (7, 3, 5)];
    for (p, q, q2) in pairs {
        let l1 = LensSpace::new(p, q).unwrap();
        let l2 = LensSpace::new(p, q2).unwrap();
        println!(
            "{l1} ~ {l2}: {}   (q*q' = {} is {}a square mod {p})",
            homotopy_equivalent(&l1, &l2),
            q * q2,
            if is_square_mod(p, (q * q2) as i64).unwrap() {
                ""
            } else {
                "not "
            },
        );
    }

    // Every odd prime splits {1..p-1} into exactly two classes of equal
    // size, while pi_1 = Z/p (and every higher homotopy group) is constant.
    for p in [5u64, 7, 11, 13] {
        let classes = equivalence_classes(p).unwrap();
        let pi1 = LensSpace::new(p, 1).unwrap().fundamental_group();
        println!("\np = {p}: pi_1 = {pi1} for every q, classes:");
        for class in classes {
            println!("  {class:?}");
        }
    }
}
