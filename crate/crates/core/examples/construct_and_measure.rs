//! Builds the named bodies and prints their basic functionals.

use spherical_bodies::shapes::{polar_reuleaux, regular_triangle, reuleaux_triangle, Pose};
use spherical_bodies::{CircularArc, ConvexBody, SpherePoint};

fn report(name: &str, k: &ConvexBody) -> spherical_bodies::Result<()> {
    let (w, _) = k.width_direct()?;
    let (d, _) = k.diameter()?;
    let inc = k.incircle()?;
    println!(
        "{name:<16} arcs {:>2}  area {:.6}  perimeter {:.6}  width {:.6}  diameter {:.6}  inradius {:.6}",
        k.arcs().len(),
        k.area(),
        k.perimeter(),
        w,
        d,
        inc.radius
    );
    Ok(())
}

fn main() -> spherical_bodies::Result<()> {
    let pose = Pose::new(SpherePoint::new(0.2, -0.1, 1.0)?, 0.4);
    let disk = ConvexBody::from_arcs(vec![CircularArc::full_circle(pose.center, 0.5)])?;
    report("disk(0.5)", &disk)?;
    report("T_1.2", &regular_triangle(1.2, pose)?)?;
    report("U_0.9", &reuleaux_triangle(0.9, pose)?)?;
    report("polar U, w=2.2", &polar_reuleaux(2.2, pose)?)?;

    // bodies serialize to a canonical JSON form
    let u = reuleaux_triangle(0.9, pose)?.canonicalize();
    let back = ConvexBody::from_json(&u.to_json())?;
    println!("JSON round trip: hausdorff {:.3e}", u.hausdorff(&back));
    Ok(())
}
