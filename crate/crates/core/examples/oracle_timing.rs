//! Rough throughput probe for the factorization engine on sweep-shaped
//! inputs; prints timings only, asserts nothing.

use std::time::Instant;

use lacunary::oracle::is_irreducible;
use lacunary::SparsePoly;

fn main() {
    let coeffs: [i64; 6] = [1, -1, 3, -3, 7, 8];
    let consts: [i64; 8] = [4, -4, 9, 16, 27, -27, 32, -32];
    let exp_sets: [&[u64]; 4] = [&[8, 1], &[8, 5, 3, 1], &[8, 6, 4, 2], &[7, 6, 2, 1]];

    let mut polys = Vec::new();
    for exps in exp_sets {
        match exps.len() {
            2 => {
                for a in coeffs {
                    for b in coeffs {
                        for c0 in consts {
                            polys.push(SparsePoly::from_terms_i64(&[
                                (exps[0], a),
                                (exps[1], b),
                                (0, c0),
                            ]));
                        }
                    }
                }
            }
            4 => {
                for a in coeffs {
                    for b in coeffs {
                        for c in coeffs {
                            for d in coeffs {
                                for c0 in consts {
                                    polys.push(SparsePoly::from_terms_i64(&[
                                        (exps[0], a),
                                        (exps[1], b),
                                        (exps[2], c),
                                        (exps[3], d),
                                        (0, c0),
                                    ]));
                                }
                            }
                        }
                    }
                }
            }
            _ => unreachable!(),
        }
    }

    let start = Instant::now();
    let mut irreducible = 0usize;
    for f in &polys {
        if is_irreducible(f, 14).unwrap() {
            irreducible += 1;
        }
    }
    let elapsed = start.elapsed();
    println!(
        "{} polynomials in {:.2?} ({:.1} µs each); {} irreducible",
        polys.len(),
        elapsed,
        elapsed.as_micros() as f64 / polys.len() as f64,
        irreducible
    );
}
