//! Entanglement-assisted parameters from linear GF(4) codes.

use stabforge::code::{Budget, LinearCode};
use stabforge::gf::Field;
use stabforge::stabilizer::{ea_ebits, render_human};

fn main() -> stabforge::Result<()> {
    let f = Field::gf(4)?;
    let w = f.generator();
    let codes = [
        vec![vec![1, 0]],
        vec![vec![1, 1, 1, 1]],
        vec![vec![1, 0, w, 1, 0], vec![0, 1, 1, w, 1]],
    ];
    for rows in codes {
        let c = LinearCode::new(&f, rows[0].len(), &rows)?;
        print!("{}", render_human(&ea_ebits(&c, Budget::default())?));
    }
    Ok(())
}
