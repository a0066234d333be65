# Arrow space kernel
