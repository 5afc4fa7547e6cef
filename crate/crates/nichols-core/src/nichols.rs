// TODO: implemented in a later pass
