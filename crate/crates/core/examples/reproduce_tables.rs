//! Recomputes every tabulated minimal case and compares with the table.
//! Set AUTZ_THREADS to limit parallelism.

use autz::cli::reproduce;

fn main() {
    let mut failures = 0;
    for list in [1, 2] {
        let reports = reproduce(list).expect("catalog cases are valid");
        for r in &reports {
            let a = r.aut_z.as_ref().unwrap();
            println!(
                "{} {:<20} {:<22} |K|={:<2} H1={:<20} Aut_Z order {} ({:?})",
                if r.pass { "ok  " } else { "FAIL" },
                r.name.as_deref().unwrap_or(""),
                r.datum,
                r.trivial_action_order,
                r.h1_s.as_deref().unwrap_or("-"),
                a.order,
                a.certainty
            );
            failures += usize::from(!r.pass);
        }
    }
    println!("{failures} mismatches");
}
