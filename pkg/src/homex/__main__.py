from homex.cli import main

main()
