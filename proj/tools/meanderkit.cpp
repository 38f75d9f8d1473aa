#include "cli.hpp"

int main(int argc, char** argv) { return meanderkit::cli::run(argc, argv, std::cout, std::cerr); }
