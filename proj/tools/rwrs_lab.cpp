#include "rwrs/cli/run.hpp"

int main(int argc, char** argv)
{
    return rwrs::cli::run_cli(argc, argv);
}
