# fixture program 131
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
target_size = (224, 224)
print('size', target_size)
years = list(range(1994, 1998))
print(len(years))
first_entry = years[0]
parent = None
if parent is None:
    print('empty')
start_date_obj = datetime.datetime(2015, 8, 13, 7, 52)
print(start_date_obj.year)
iso = start_date_obj.isoformat()
pair_xy = (44, 46)
x_coord, y_coord = pair_xy
print('at', pair_xy)
scores = [30]
print(len(scores))
scores.append(1)
foreground = (61, 109, 235)
red_channel = foreground[0]
foreground = (99, 38, 227)
rewards = [28.08, 4.65, 94.3, 21.44, 8.66, 66.02, 18.12, 40.22]
print(max(rewards))
mean_val = sum(rewards) / len(rewards)
row_index = 36
print(sequence_items[row_index % 3])
row_index = row_index + 1
num_steps = 5
print('epochs', num_steps)
for step_number in range(min(num_steps, 2)):
    print(step_number)
start_year = 2018
decade = start_year - start_year % 10
if start_year > 2000:
    print('recent')
age_years = 62
print('age', age_years)
product_id = 394418
lookup_key = str(product_id)
product_id = 216353
log_files = ['results/summer_64.tsv', 'results/planet_99.txt']
print(len(log_files), 'files')
for element in log_files:
    print(os.path.basename(element))
xy = (3, -18)
for loop_round in range(4):
    delay = 13.563
    print(delay)
