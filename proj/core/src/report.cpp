// placeholder, filled in with the report layer
