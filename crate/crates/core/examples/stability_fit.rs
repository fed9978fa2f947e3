//! Fits the area-gap and distance rates of the two perturbation families.

use spherical_bodies::inequalities::{
    geometric_grid, stability_sweep, tip_gap_coefficient, Family,
};

fn main() -> spherical_bodies::Result<()> {
    let grid = geometric_grid(1e-4, 1e-2, 8);
    for (family, w) in [(Family::SmallWidth, 1.2), (Family::LargeWidth, 2.0)] {
        let r = stability_sweep(family, w, &grid)?;
        println!(
            "{} w={w}: gap ~ {:.4}·ε^{:.4}, distance ~ gap^{:.4}, in band {}",
            r.family, r.fitted_constant, r.fitted_exponent, r.distance_fit.exponent, r.in_band
        );
    }
    println!(
        "leading tip coefficient at w=2.0: {:.6}",
        tip_gap_coefficient(2.0)?
    );
    Ok(())
}
