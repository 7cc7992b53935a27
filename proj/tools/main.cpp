#include "seatarrange/cli.hpp"

int main(int argc, char** argv) { return seat::cli::run(argc, argv); }
