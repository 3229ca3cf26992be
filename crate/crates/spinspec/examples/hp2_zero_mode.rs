//! The quaternionic projective plane carries a genuine Rarita-Schwinger
//! zero mode: real dimension 8 is exactly the edge where the Ker P*
//! spectrum touches zero. One dimension up the spectrum is strictly
//! positive again.
//!
//! Run with: cargo run --example hp2_zero_mode

use num_traits::Zero;
use spinspec::engine::{cross_validate, enumerate_spectrum};
use spinspec::rational::format_rational;
use spinspec::spaces::{make_space, SpaceKind, Sector};

fn main() -> spinspec::Result<()> {
    let hp2 = make_space(SpaceKind::QuaternionicProjective, 2)?;
    let lines = enumerate_spectrum(&hp2, Sector::KerPStar, 4)?;
    for line in &lines {
        let marker = if line.eigenvalue.is_zero() { "   <-- zero mode" } else { "" };
        println!(
            "HP^2  Ker P*  {:>6}  x {}{}",
            format_rational(&line.eigenvalue),
            line.multiplicity,
            marker
        );
    }
    assert!(lines[0].eigenvalue.is_zero());

    // the validation suite records the zero as a finding, not a failure
    let report = cross_validate(&hp2, 4)?;
    assert!(report.all_passed());
    for check in report.checks.iter().filter(|c| c.name.ends_with("finding")) {
        println!("finding: {}", check.witness);
    }

    let hp3 = make_space(SpaceKind::QuaternionicProjective, 3)?;
    let lowest = &enumerate_spectrum(&hp3, Sector::KerPStar, 4)?[0];
    println!(
        "HP^3  lowest Ker P* eigenvalue {} (strictly positive, N = 12 > 8)",
        format_rational(&lowest.eigenvalue)
    );
    Ok(())
}
