#include "cmlab/cli/run.hpp"

int main(int argc, char** argv) { return cmlab::cli::run(std::vector<std::string>(argv + 1, argv + argc)); }
