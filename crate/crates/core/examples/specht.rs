// Seminormal Specht modules of the symmetric group.

use periplectic::field::Rational;
use periplectic::partitions::Partition;
use periplectic::specht::SpechtModule;

fn main() {
    let shape = Partition::of(&[3, 1]);
    let sp = SpechtModule::<Rational>::new(&shape).unwrap();
    println!("S{shape}: dimension {}", sp.dim());
    for t in sp.tableaux() {
        println!("  {t}  contents {:?}", t.contents());
    }
    let s1 = sp.generator(1);
    assert_eq!(s1.mul(s1), sp.permutation(&[0, 1, 2, 3]));
    println!("s_1 acts as");
    for r in 0..s1.rows() {
        let row: Vec<String> = (0..s1.cols()).map(|c| s1[(r, c)].to_string()).collect();
        println!("  [{}]", row.join(", "));
    }
}
