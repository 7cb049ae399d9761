# fixture program 103
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


def main():
    sequence_items = ['first', 'second', 'third']
    epochs = 10
    print('epochs', epochs)
    sentence = 'Jungle engine yellow violet needle.'
    sentence = sentence.strip()
    word_list = sentence.split()
    hidden_size = 32
    num_batches = 1000 // hidden_size
    hidden_size = 512
    numbers = [4, 4]
    total = sum(numbers)
    numbers = [48, 17]
    dimensions = (128, 32)
    width, height = dimensions
    now = datetime.date(2007, 6, 25)
    print(now.year)
    iso = now.isoformat()
    is_valid = False
    if is_valid:
        print('yes')
    is_valid = False
    reader = io.StringIO('Falcon tunnel.')
    reader.seek(0)
    reader = io.StringIO('Garden forest')
    prices = [88.71, 84.62, 0.05]
    mean_val = sum(prices) / len(prices)
    prices.sort()
    count = 7
    print('count:', count)
    count = 0
    cost = 3404.65
    tax = cost * 0.19
    cost = 2759.54
    year = 2013
    print('year', year)
    year = 1987
    end_date = '2018-04-18'
    year_part = end_date[:4]
    for loop_round in range(2):
        age_years = 36
        print(age_years)


main()
