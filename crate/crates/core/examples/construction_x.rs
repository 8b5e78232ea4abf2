//! Construction X on a small GF(4) code with a nontrivial Hermitian hull gap.

use stabforge::code::{hull, Budget, InnerProduct, LinearCode};
use stabforge::gf::Field;
use stabforge::stabilizer::{construction_x, render_human};

fn main() -> stabforge::Result<()> {
    let f = Field::gf(4)?;
    let w = f.generator();
    for rows in [vec![vec![1, 0]], vec![vec![1, w, 0, 1], vec![0, 1, 1, w]]] {
        let c = LinearCode::new(&f, rows[0].len(), &rows)?;
        let h = hull(&c, InnerProduct::Hermitian)?;
        println!("k = {}, hull dimension = {}", c.dim(), h.dim());
        print!("{}", render_human(&construction_x(&c, Budget::default())?));
    }
    Ok(())
}
