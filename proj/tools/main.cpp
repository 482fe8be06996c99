#include <schubertk/cli.hpp>

int main(int argc, char** argv) { return schubertk::run_main(argc, argv); }
