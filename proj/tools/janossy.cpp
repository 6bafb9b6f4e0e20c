#include "janossy/cli/run.hpp"

int main(int argc, char** argv)
{
    return janossy::cli::run(argc, argv);
}
