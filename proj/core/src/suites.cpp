// placeholder, filled in with the suite layer
