from polycut.cli import main

main()
