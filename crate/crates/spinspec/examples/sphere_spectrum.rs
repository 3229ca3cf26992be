//! Spectrum of the squared Rarita-Schwinger operator on the round 7-sphere,
//! in both spectral sectors, printed with exact rational eigenvalues.
//!
//! Run with: cargo run --example sphere_spectrum

use spinspec::engine::enumerate_spectrum;
use spinspec::rational::format_rational;
use spinspec::spaces::{make_space, SpaceKind, Sector};

fn main() -> spinspec::Result<()> {
    let sphere = make_space(SpaceKind::Sphere, 7)?;
    for sector in [Sector::ImP, Sector::KerPStar] {
        println!("S^7, sector {sector}:");
        for line in enumerate_spectrum(&sphere, sector, 5)? {
            let labels: Vec<String> = line
                .contributors
                .iter()
                .map(|(label, _, _)| label.to_string())
                .collect();
            println!(
                "  {:>10}  x {:<8}  from {}",
                format_rational(&line.eigenvalue),
                line.multiplicity,
                labels.join(", ")
            );
        }
        println!();
    }
    // On Im P every eigenvalue is ((N-2)/N)^2 (k + N/2)^2; the lowest Ker P*
    // eigenvalue (1 + N/2)^2 = 81/4 carries multiplicity 320.
    Ok(())
}
