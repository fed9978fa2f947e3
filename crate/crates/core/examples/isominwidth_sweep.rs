//! Runs the isominwidth suites on small seeded corpora and prints the CSV.

use spherical_bodies::inequalities::{rows_to_csv, verify_suite, Suite};

fn main() -> spherical_bodies::Result<()> {
    for suite in [Suite::IsominwidthSmall, Suite::IsominwidthLarge] {
        let rows = verify_suite(suite, 7, 8)?;
        print!("{}", rows_to_csv(&rows));
        let min = rows.iter().map(|r| r.slack).fold(f64::INFINITY, f64::min);
        println!("# {}: min slack {min:.3e}\n", suite.name());
    }
    Ok(())
}
