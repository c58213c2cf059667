//! Prints a Voigt line profile `K(x, y)` for a few damping ratios.
//!
//! ```text
//! cargo run --example voigt_profile
//! ```

use fadsamp::special::{voigt, VoigtPoint};
use fadsamp::default_table;

fn main() -> fadsamp::Result<()> {
    let table = default_table();
    let dampings = [0.01, 0.1, 1.0, 10.0];
    print!("x");
    for y in dampings {
        print!(",K(x;{y})");
    }
    println!();
    for k in 0..=40 {
        let x = 0.25 * k as f64;
        print!("{x}");
        for y in dampings {
            print!(",{:.12e}", voigt(VoigtPoint::new(x, y), table)?);
        }
        println!();
    }
    Ok(())
}
