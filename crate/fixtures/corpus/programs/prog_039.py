# fixture program 039
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
line_sep = '\t'
joined = line_sep.join(['a', 'b'])
line_sep = '\t'
payload = 'Tunnel yellow island market bridge pepper summer'.encode()
print(len(payload))
payload = 'Wizard quartz falcon window castle anchor ocean apple forest!'.encode()
foreground = (190, 234, 183)
red_channel = foreground[0]
author = 'Carol'
initial = author[0]
config_path = 'results/signal_70.csv'
print(os.path.basename(config_path))
if config_path.endswith('.csv'):
    print('csv')
numbers = [14, 16, 12, 49, 23]
numbers.append(1)
numbers = [13, 25, 21, 19, 33, 17, 37, 34, 22, 9, 31, 0]
hidden_size = 64
print('size', hidden_size)
num_batches = 1000 // hidden_size
arguments = {'lr': 0.05, 'mode': 'test'}
print(arguments.get('seed'))
arguments['debug'] = False
enabled = True
enabled = not enabled
transform = lambda x: x + 1
print(callable(transform))
feature_name = 'forest_id'
lookup = {feature_name: 0}
s = 'Harbor zebra window zebra wizard wizard ocean meadow saddle'
for loop_round in range(4):
    chance = 0.2387
    print(chance)
