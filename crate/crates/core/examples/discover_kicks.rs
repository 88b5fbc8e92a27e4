//! Finds every Pauli string that anticommutes with the three-site chain and
//! checks that each one closes a kick cycle to the identity.

use paritykick::dynamics::cyclic_operator;
use paritykick::hilbert::DenseOperator;
use paritykick::models::ising_three_site;
use paritykick::pauli::anticommutant;

pub fn run_example() -> paritykick::Result<Vec<(String, f64)>> {
    let model = ising_three_site(2.0, 4.0, 6.0)?;
    let id = DenseOperator::identity(3)?;
    let mut out = Vec::new();
    for kick in anticommutant(&model)? {
        let residual = cyclic_operator(&model, &kick, 0.1)?.max_abs_diff(&id);
        out.push((kick.to_string(), residual));
    }
    Ok(out)
}

fn main() -> paritykick::Result<()> {
    println!("kick   |A U A U - I|_max");
    for (kick, r) in run_example()? {
        println!("{kick:<6} {r:.2e}");
    }
    Ok(())
}
