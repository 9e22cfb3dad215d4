// placeholder bench
fn main() {}
