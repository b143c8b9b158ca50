#include <circham/commands.hpp>

#include <exception>
#include <iostream>

int main(int argc, char * argv[])
{
    try {
        return circham::run_cli(argc, argv, std::cout, std::cerr);
    }
    catch (const std::exception & e) {
        std::cerr << "circham: " << e.what() << "\n";
        return circham::exit_failed;
    }
}
