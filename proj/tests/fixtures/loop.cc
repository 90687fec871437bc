def X0(1, 2) = 1.succ -> 2.xx; 2.this -> 1.xx; call X0
main = call X0
