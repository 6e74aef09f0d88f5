fn main() { println!("holonomy"); }
