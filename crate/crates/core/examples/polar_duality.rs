//! Polar bodies: involution, width duality and the Barbier relation.

use std::f64::consts::TAU;

use spherical_bodies::inequalities::check_barbier;
use spherical_bodies::polar::{is_constant_width, polar_body, width_via_polar};
use spherical_bodies::shapes::{reuleaux_triangle, Pose};

fn main() -> spherical_bodies::Result<()> {
    for r in [0.3, 0.8, 1.3] {
        let u = reuleaux_triangle(r, Pose::default())?;
        let up = polar_body(&u)?;
        let (cw, spread) = is_constant_width(&up, 1e-6);
        println!(
            "U_{r}: polar has {} arcs, width {:.6} (π − r = {:.6})",
            up.arcs().len(),
            up.width_direct()?.0,
            std::f64::consts::PI - r
        );
        println!(
            "  constant width {cw} (spread {spread:.2e}), width via polar {:.6}",
            width_via_polar(&u)?
        );
        println!(
            "  per(K°) − (2π − area(K)) = {:.2e}",
            up.perimeter() - (TAU - u.area())
        );
        println!(
            "  involution {:.2e}, Barbier residual {:.2e}",
            polar_body(&up)?.hausdorff(&u),
            check_barbier(&up)?
        );
    }
    Ok(())
}
