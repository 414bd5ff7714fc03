// Arithmetic in GF(4) and GF(9), and the conjugation x -> x^(p^nu) used by
// the Hermitian inner product.

use abelian_lcd::build_field;

fn main() -> Result<(), abelian_lcd::Error> {
    let f4 = build_field(2, 2)?;
    println!("GF(4) = GF(2)[x] / {:?} (low to high)", f4.modulus());
    for a in f4.elements() {
        let row: Vec<String> = f4.elements().map(|b| f4.mul(a, b).to_string()).collect();
        println!("  {a} * _ = {}", row.join(" "));
    }
    for a in f4.elements() {
        println!("  conj({a}) = {}", f4.frobenius_conjugate(a, 1)?);
    }

    let f9 = build_field(3, 2)?;
    let x = f9.from_coeffs(&[0, 1]);
    println!("\nGF(9) = GF(3)[x] / {:?}", f9.modulus());
    for e in 0..=8 {
        println!("  x^{e} = {:?}", f9.coeffs(f9.pow(x, e)));
    }
    let fixed: Vec<String> = f9
        .elements()
        .filter(|&a| f9.frobenius_conjugate(a, 1) == Ok(a))
        .map(|a| a.to_string())
        .collect();
    println!("  fixed by conjugation: {}", fixed.join(" "));
    Ok(())
}
