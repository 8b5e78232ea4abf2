//! Bound checks on certified and given parameters.

use stabforge::bounds::{gv_exists, hamming, singleton};
use stabforge::stabilizer::{CodeParams, Purity};

fn main() -> stabforge::Result<()> {
    for (q, n, k, d, pure) in [(2, 5, 1, 3, Purity::Pure), (2, 7, 1, 3, Purity::Pure), (3, 6, 2, 3, Purity::Unknown)] {
        let p = CodeParams::given(q, n, k, d, pure)?;
        println!("{}", p.label());
        println!("  {}", singleton(&p).kv());
        println!("  {}", hamming(&p).kv());
    }
    for d in 2..=6 {
        println!("{}", gv_exists(2, 20, 2, d)?.kv());
    }
    Ok(())
}
