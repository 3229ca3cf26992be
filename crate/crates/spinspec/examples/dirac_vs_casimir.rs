//! Squared Dirac spectra on all three space families, each eigenvalue
//! computed twice — by the closed product formula and as Casimir + scal/8 —
//! plus detection of the Killing-spinor bound.
//!
//! Run with: cargo run --example dirac_vs_casimir

use spinspec::rational::format_rational;
use spinspec::spaces::{
    dirac_squared, enumerate_labels, killing_eigenvalue, label_to_weight, make_space,
    r_squared_from_casimir, SpaceKind, Sector,
};

fn main() -> spinspec::Result<()> {
    for (kind, n) in [
        (SpaceKind::Sphere, 5),
        (SpaceKind::ComplexProjective, 3),
        (SpaceKind::QuaternionicProjective, 2),
    ] {
        let space = make_space(kind, n)?;
        let killing = killing_eigenvalue(&space);
        println!(
            "{kind}:{n}  Killing bound N*scal/(4(N-1)) = {}",
            format_rational(&killing)
        );
        for (label, _) in &enumerate_labels(&space, Sector::FullSpinor, 2).labels {
            let closed = dirac_squared(&space, label)?;
            let weight = label_to_weight(&space, label)?;
            let via_casimir = r_squared_from_casimir(&space, Sector::FullSpinor, &weight)?;
            assert_eq!(closed, via_casimir);
            let attained = if closed == killing { "  (Killing spinors)" } else { "" };
            println!("  D^2 = {:>6}  on {label}{attained}", format_rational(&closed));
        }
        println!();
    }
    Ok(())
}
