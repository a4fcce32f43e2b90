//! Size and spectral thresholds for extendability and excludability.
//!
//!     cargo run --example thresholds -- 2

use matchspec::theorems::{
    size_threshold_excludable, size_threshold_extendable, spectral_threshold_excludable,
    spectral_threshold_extendable,
};

fn main() -> matchspec::Result<()> {
    let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    println!("{:>3} {:>6} {:>10} {:>6} {:>10}", "n", "m_ext", "rho_ext", "m_exc", "rho_exc");
    for n in (2 * k + 2..=16).step_by(2) {
        let exc = if n >= 6 {
            format!("{:>6} {:>10.6}", size_threshold_excludable(n)?, spectral_threshold_excludable(n)?)
        } else {
            format!("{:>6} {:>10}", "-", "-")
        };
        println!(
            "{n:>3} {:>6} {:>10.6} {exc}",
            size_threshold_extendable(n, k)?,
            spectral_threshold_extendable(n, k)?
        );
    }
    Ok(())
}
