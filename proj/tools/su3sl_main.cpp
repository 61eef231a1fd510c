#include "su3sl/report.hpp"

int main(int argc, char** argv) { return su3sl::cli_main(argc, argv); }
