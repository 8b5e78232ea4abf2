//! The hexacode over GF(4): Hermitian self-dual, so it gives a [[6,0,4]]
//! stabilizer state through the Φ correspondence.

use stabforge::code::{dual, Budget, InnerProduct, LinearCode, Phi};
use stabforge::gf::Field;
use stabforge::stabilizer::{certify_additive, render_human};

fn main() -> stabforge::Result<()> {
    let f = Field::gf(4)?;
    let w = f.generator();
    let hexacode = LinearCode::new(
        &f,
        6,
        &[vec![1, 0, 0, 1, w, w], vec![0, 1, 0, w, 1, w], vec![0, 0, 1, w, w, 1]],
    )?;
    let herm = dual(&hexacode, InnerProduct::Hermitian)?;
    println!("dim C = {}, dim C^⊥H = {}", hexacode.dim(), herm.dim());

    let phi = Phi::new(&f)?;
    for row in hexacode.generator().iter_rows() {
        println!("{:?} -> (a|b) = {:?}", row, phi.inverse(row));
    }
    print!("{}", render_human(certify_additive(&hexacode, Budget::default())?.params()));
    Ok(())
}
