# Keep this module minimal: importing the package must not load the command
# line or read the configuration file.
