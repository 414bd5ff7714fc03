// Drives the command line in-process and captures its output.

fn main() {
    for line in [
        "count --group 3,3 --p 2 --nu 1 --euclidean",
        "count --group 3,3 --p 2 --nu 1 --euclidean --json",
        "classify --group 5 --p 2 --hermitian",
        "verify --group 3 --p 2 --hermitian --json",
    ] {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("abelian-lcd").chain(line.split_whitespace());
        let code = abelian_lcd::cli::run(argv, &mut out, &mut err);
        println!("$ abelian-lcd {line}    (exit {code})");
        print!("{}", String::from_utf8_lossy(&out));
        print!("{}", String::from_utf8_lossy(&err));
        println!();
    }
}
