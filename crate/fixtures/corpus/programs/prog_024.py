# fixture program 024
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
entries = [('jungle', 57), ('stone', 6), ('number', 22)]
print(len(entries))
for element in entries:
    print(element[0])
elapsed_time = 106.657
print('took %.2fs' % elapsed_time)
level = 'red'
if level == 'train':
    print('training')
password = 'yuJdBHoqVVF'
masked = '*' * len(password)
password = '4m2D5TMepJ'
output_dir = pathlib.Path('logs/python')
target_file = output_dir / 'out.csv'
print(output_dir.name)
output_dir = pathlib.Path('models/bridge')
pair_xy = (37, -50)
print('at', pair_xy)
x_coord, y_coord = pair_xy
exact_amount = decimal.Decimal('8215.05')
print('balance', exact_amount)
last_name = 'Madrid'
print('Hello,', last_name)
initial = last_name[0]
buffer_size = 16
num_batches = 1000 // buffer_size
color_rgb = (1, 4, 141)
red_channel = color_rgb[0]
periods = list(range(2006, 2012))
print(len(periods))
first_entry = periods[0]
end_date = '2007-08-25'
print('date', end_date)
year_part = end_date[:4]
predictions = np.arange(3)
predictions = predictions + 1
predictions = np.arange(10)
temperature = 176.4
print('measured', temperature)
temperature = 89.29
k = 32
for loop_round in range(2):
    release_year = 1980
    print(release_year)
