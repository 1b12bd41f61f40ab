#include "commands.hpp"

int main(int argc, char** argv) { return cmpoly::cli::run(argc, argv); }
