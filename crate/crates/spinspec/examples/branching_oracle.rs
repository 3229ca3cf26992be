//! The three closed-form branching rules (Spin interlacing, SU
//! interlacing-with-level, the Sp Laurent-coefficient rule) against the
//! independent character-restriction oracle.
//!
//! Run with: cargo run --example branching_oracle

use spinspec::branching::sp_branch_multiplicity;
use spinspec::engine::oracle_validate;
use spinspec::rep::{branch_by_restriction, EmbeddingKind};
use spinspec::spaces::{make_space, SpaceKind};
use spinspec::weight::{GroupDescriptor, Series, Weight};

fn main() -> spinspec::Result<()> {
    // One decomposition in full: Sp(3) restricted to Sp(1) x Sp(2).
    let c3 = GroupDescriptor::new(Series::C, 3)?;
    let lam = Weight::from_i64(&[1, 1, 0]);
    let decomp = branch_by_restriction(&lam, &c3, EmbeddingKind::SpToSp1Sp)?;
    println!("Sp(3) module (1,1,0) under Sp(1) x Sp(2):");
    for (mu, mult) in &decomp.summands {
        let rule = sp_branch_multiplicity(&lam, mu, 2)?;
        assert_eq!(&rule, mult);
        println!("  ({mu})  multiplicity {mult}");
    }

    // And the systematic sweep behind it, for every small space.
    for (kind, n) in [
        (SpaceKind::Sphere, 4),
        (SpaceKind::Sphere, 5),
        (SpaceKind::ComplexProjective, 3),
        (SpaceKind::QuaternionicProjective, 2),
    ] {
        let space = make_space(kind, n)?;
        let report = oracle_validate(&space, 5)?;
        assert!(report.all_passed());
        for check in &report.checks {
            println!("{kind}:{n}  {}: {}", check.name, check.witness);
        }
    }
    Ok(())
}
