//! Arithmetic in GF(9) and its relation to the subfield GF(3).

use stabforge::gf::Field;

fn main() -> stabforge::Result<()> {
    let f = Field::gf(9)?;
    let base = Field::gf(3)?;
    println!("GF({}) modulus (low degree first): {:?}", f.q(), f.modulus());
    let g = f.generator();
    println!("generator {} has powers:", f.elem(g));
    for e in 0..8 {
        let x = f.pow(g, e);
        println!(
            "  g^{e} = {:<6} conj = {:<6} Tr = {}",
            f.elem(x),
            f.elem(f.conj(x)),
            f.trace(x, &base)?
        );
    }
    let x = f.pow(g, 3);
    let y = f.pow(g, 6);
    println!("g^3 * g^6 = {}", f.elem(f.mul(x, y)));
    println!("1 / g^3 = {}", f.elem(f.inv(x)));
    Ok(())
}
