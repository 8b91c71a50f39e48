fn main() { println!("{}", covsr::placeholder()); }
