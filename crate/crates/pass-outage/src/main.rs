fn main() {
    std::process::exit(pass_outage::cli::run());
}
