//! Rarita-Schwinger spectra on CP^3: the Ker P* sector assembled from the
//! plus and minus highest-weight families, cross-checked against the
//! Casimir eigenvalue plus the universal constant shift.
//!
//! Run with: cargo run --example projective_rarita

use spinspec::engine::enumerate_spectrum;
use spinspec::rational::{format_rational, ratio};
use spinspec::rep::casimir_eigenvalue;
use spinspec::spaces::{make_space, SpaceKind, Sector};

fn main() -> spinspec::Result<()> {
    let cp3 = make_space(SpaceKind::ComplexProjective, 3)?;
    let nn = cp3.real_dim as i64; // real dimension 2n = 6
    let shift = ratio(nn - 8, nn) * &cp3.scal_eighth;
    println!(
        "CP^3: scal/8 = {}, Ker P* shift (N-8)/N * scal/8 = {}",
        format_rational(&cp3.scal_eighth),
        format_rational(&shift)
    );

    for line in enumerate_spectrum(&cp3, Sector::KerPStar, 3)? {
        println!("eigenvalue {}", format_rational(&line.eigenvalue));
        for (label, weight, _) in &line.contributors {
            let cas = casimir_eigenvalue(weight, &cp3.group, &cp3.form)?;
            // closed form = Casimir + shift, exactly
            assert_eq!(&cas + &shift, line.eigenvalue);
            println!("    {label}  highest weight ({weight})  Casimir {}", format_rational(&cas));
        }
    }
    Ok(())
}
