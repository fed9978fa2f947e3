//! The cap domain of a random body and the area chain down to the regular triangle.

use spherical_bodies::inequalities::cap_domain_chain;
use spherical_bodies::shapes::{cap_domain, random_body};

fn main() -> spherical_bodies::Result<()> {
    for seed in 0..5 {
        let k = random_body(1.0, seed)?;
        let (spec, c) = cap_domain(&k)?;
        let ch = cap_domain_chain(&k)?;
        println!(
            "seed {seed}: w {:.4}  r {:.4}  peak distance {:.4}  C arcs {}",
            spec.w,
            spec.inradius(),
            spec.peak_distance(),
            c.arcs().len()
        );
        println!(
            "  area K {:.6} ≥ C {:.6} = C_reg {:.6} ≥ F(η) {:.6} ≥ T {:.6}  (η = {:.4})",
            ch.area_k, ch.area_c, ch.area_c_reg, ch.f_bound, ch.area_t, ch.eta
        );
    }
    Ok(())
}
