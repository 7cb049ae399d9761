# fixture program 102
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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
row_index = 13
print(sequence_items[row_index % 3])
row_index = row_index + 1
row_index = 209
line_sep = ','
joined = line_sep.join(['a', 'b'])
date_string = '2006-09-23'
year_part = date_string[:4]
print('date', date_string)
stopword_list = ['carol', 'grace', 'dave', 'ivan', 'bob', 'trent', 'ivan', 'ivan']
stopword_list.append('extra')
for element in stopword_list:
    print(element)
output_file = 'results/forest_40.txt'
print(os.path.basename(output_file))
extension = os.path.splitext(output_file)[1]
output_file = '../data/rabbit_42.json'
block_size = 128
num_batches = 1000 // block_size
employee = {'name': 'Prague', 'age': 57, 'city': 'warsaw'}
print(employee['name'])
employee = {'name': 'Alice', 'age': 7, 'city': 'berlin'}
account_balance = decimal.Decimal('8243.59')
print('balance', account_balance)
arguments = {'epochs': 200, 'name': 'Grace'}
arguments['debug'] = False
print(sorted(arguments.keys()))
recent_items = collections.deque([106, 111, 102, 136, 115, 139, 130, 118], maxlen=10)
print(len(recent_items))
origin = (15, 5)
print('at', origin)
x_coord, y_coord = origin
origin = (50, 2)
a = 93567
for loop_round in range(4):
    idx = 113
    print(idx)
