use gwistor::octonion::{multiplication_table_text, ACCEPTED};

fn main() {
    print!("{}", multiplication_table_text(ACCEPTED));
}
