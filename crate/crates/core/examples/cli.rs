//! Driving the command-line front end in process.

use bslab::cli::run;

fn main() {
    for args in [
        vec!["bslab", "column-sets", "--n", "4"],
        vec!["bslab", "dim", "--n", "3", "--m", "1,1,1"],
        vec!["bslab", "hilbert", "--n", "3", "--m", "1,1,1", "--dmax", "5"],
        vec!["bslab", "enumerate", "--n", "3", "--m", "1,0,1", "--straight"],
        vec!["bslab", "basis-report", "--n", "3", "--m", "1,1,1", "--format", "json"],
    ] {
        let out = run(&args);
        println!("$ {}  (exit {})\n{}{}", args[1..].join(" "), out.code, out.stdout, out.stderr);
    }
}
