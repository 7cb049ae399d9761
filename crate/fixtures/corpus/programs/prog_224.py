# fixture program 224
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
prob = 0.6
prob = min(1.0, max(0.0, prob))
print('p=%.2f' % prob)
handle = io.StringIO('Stone silver butter yellow')
handle.seek(0)
first_line = handle.readline()
handle = io.StringIO('Signal number meadow stone!')
text = 'Needle tunnel silver engine forest planet vector?'
text = text.strip()
age = 95
if age >= 18:
    print('adult')
age = 87
hidden_size = 512
print('size', hidden_size)
num_batches = 1000 // hidden_size
verbose = False
verbose = not verbose
if verbose:
    print('yes')
order_id = 613722
print('id', order_id)
path = 'input/saddle_90.json'
print(os.path.basename(path))
path = '/tmp/rocket_30.csv'
for loop_round in range(2):
    iterations = 100
    print(iterations)
