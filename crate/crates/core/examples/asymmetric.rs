//! Asymmetric CSS codes and the AQMDS case table.

use stabforge::bounds::{aqc_singleton, aqmds_feasible};
use stabforge::code::{Budget, InnerProduct, LinearCode};
use stabforge::gf::Field;
use stabforge::stabilizer::{css_aqc, render_human};

fn main() -> stabforge::Result<()> {
    let f = Field::gf(2)?;
    let even7 = LinearCode::new(&f, 7, &(1..7).map(|i| {
        let mut r = vec![0; 7];
        r[0] = 1;
        r[i] = 1;
        r
    }).collect::<Vec<_>>())?;
    let hamming = LinearCode::new(
        &f,
        7,
        &[
            vec![1, 0, 0, 0, 0, 1, 1],
            vec![0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 1, 1, 0],
            vec![0, 0, 0, 1, 1, 1, 1],
        ],
    )?;
    let p = css_aqc(&even7, &hamming, InnerProduct::Euclidean, Budget::default())?;
    print!("{}", render_human(&p));
    println!("{}", aqc_singleton(&p));

    for (q, n, j, k) in [(2, 6, 4, 1), (5, 4, 1, 2), (4, 5, 1, 2), (8, 10, 2, 1), (2, 7, 5, 1)] {
        let m = aqmds_feasible(q, n, j, k)?;
        println!("q={q} n={n} j={j} k={k}: feasible={} cases={:?}", m.feasible(), m.cases);
    }
    Ok(())
}
