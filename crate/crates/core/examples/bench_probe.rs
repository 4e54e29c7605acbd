use std::time::Instant;
use symchar_core::basic_sets::{basic_set_test, split, Cut};
use symchar_core::char_tables::CharTable;

fn main() {
    let x = CharTable::build(8).unwrap();
    let t0 = Instant::now();
    let d = x.values().det().unwrap();
    println!("det X8 = {d} in {:?}", t0.elapsed());

    let t0 = Instant::now();
    let s = x.values().snf();
    println!("snf X8 = {s} in {:?}", t0.elapsed());

    let cut = Cut::Top;
    let sp = split(&x, &cut).unwrap();
    let t0 = Instant::now();
    let rep = basic_set_test(&sp.xbar_small, &(0..x.size()).collect::<Vec<_>>()).unwrap();
    println!("basic_set_test ALL n=8: is_basic={} in {:?}", rep.is_basic, t0.elapsed());
}
