//! Products and commutation of Pauli operators, with phases.

use stabforge::gf::Field;
use stabforge::pauli::{commute_phase, error_set_size, pauli_mul, pauli_parse};

fn main() -> stabforge::Result<()> {
    let f = Field::gf(2)?;
    let e = pauli_parse("IX", &f)?;
    let e2 = pauli_parse("ZY", &f)?;
    println!("{e} * {e2} = {}", pauli_mul(&e, &e2)?);
    println!("{e2} * {e} = {}", pauli_mul(&e2, &e)?);
    println!("commute phase: {}", commute_phase(&e, &e2)?);
    println!("X * Z = {}", pauli_mul(&pauli_parse("X", &f)?, &pauli_parse("Z", &f)?)?);

    let f3 = Field::gf(3)?;
    let x = pauli_parse("X:1;Z:0;w:0", &f3)?;
    let z = pauli_parse("X:0;Z:1;w:0", &f3)?;
    println!("qutrit {x} * {z} = {}", pauli_mul(&x, &z)?);
    println!("qutrit commute phase: {}", commute_phase(&x, &z)?);

    for delta in 0..=5 {
        println!("|E_5({delta})| up to phase = {}", error_set_size(5, delta, 2, true)?);
    }
    Ok(())
}
