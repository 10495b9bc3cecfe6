fn main() { println!("twistsum"); }
