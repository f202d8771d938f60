use std::time::Instant;
fn main() {
    let start = Instant::now();
    let pd = kschur::transfer::primitive_data_with_limit(4, 4).unwrap();
    println!("k=4 primitive data in {:?}; delta has {} terms, total degree {}",
        start.elapsed(), pd.delta.num_terms(), pd.delta.total_degree());
}
