//! Random bodies of constant width and the Blaschke–Lebesgue inequality.

use spherical_bodies::inequalities::{
    blaschke_lebesgue_stability, check_blaschke_lebesgue, check_isominwidth,
};
use spherical_bodies::shapes::{random_constant_width, random_reuleaux_polygon};

fn main() -> spherical_bodies::Result<()> {
    for (seed, n) in [(1, 3), (2, 5), (3, 7), (4, 9)] {
        let k = random_reuleaux_polygon(0.9, n, seed)?;
        let bl = check_blaschke_lebesgue(&k)?;
        let (dist, excess) = blaschke_lebesgue_stability(&k)?;
        println!(
            "{n}-gon: spread {:.1e}  area {:.6} ≥ {:.6}  δ to U {:.4}  relative excess {:.2e}",
            k.constant_width_spread(),
            k.area(),
            bl.bound,
            dist,
            excess
        );
    }
    for seed in 0..4 {
        let k = random_constant_width(2.4, seed)?;
        let r = check_isominwidth(&k)?;
        println!(
            "width {:.4}: area {:.6}, polar Reuleaux bound {:.6}",
            r.w, r.area, r.bound
        );
    }
    Ok(())
}
