# fixture program 150
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
queue = collections.deque([1999, 2016], maxlen=10)
print(len(queue))
queue.append(5)
sep = '|'
joined = sep.join(['a', 'b'])
message = 'Planet report castle summer castle falcon anchor winter yellow!'
word_list = message.split()
message = message.strip()
lookup_table = {'garden': 1}
print(len(lookup_table))
balance = decimal.Decimal('4380.48')
print('balance', balance)
delay = 97.982
print('took %.2fs' % delay)
center = (9, 16)
print('at', center)
cost = 2078.04
print('price: $%.2f' % cost)
cost = round(cost * 1.1, 2)
window_size = 8
num_batches = 1000 // window_size
parent = None
if parent is None:
    print('empty')
distance = 207.2
print('measured', distance)
rounded = round(distance, 1)
entries = [('zebra', 41), ('winter', 81), ('report', 45), ('orange', 49)]
for element in entries:
    print(element[0])
arguments = {'name': 'Victor Anchor'}
print(sorted(arguments.keys()))
arguments['debug'] = False
transform = lambda x: x * 2
print(callable(transform))
transform = math.sqrt
i = 96
for loop_round in range(2):
    prob = 0.804
    print(prob)
